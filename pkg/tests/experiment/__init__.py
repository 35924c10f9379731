"""
Testes do harness de experimentos e da CLI.
"""
