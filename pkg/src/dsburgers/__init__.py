"""dsburgers - volumes finitos para Burgers relativístico no espaço-tempo de de Sitter."""

__version__ = "0.1.0"
