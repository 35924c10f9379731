"""
Testes das estratégias de energia e de partida.
"""
