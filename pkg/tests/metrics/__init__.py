"""
Testes das métricas de eficiência e agregação.
"""
