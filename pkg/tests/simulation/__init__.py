"""
Testes do mundo, cinemática e recursos.
"""
