"""Comandos do CLI dsburgers."""
