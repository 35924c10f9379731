"""
Testes do simulador de forrageamento em enxame.
"""
