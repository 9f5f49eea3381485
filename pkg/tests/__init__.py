"""Testes do dsburgers."""
