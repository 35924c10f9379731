"""
Testes do núcleo: equações de energia e máquina de estados.
"""
