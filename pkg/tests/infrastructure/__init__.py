"""
Testes de infraestrutura: configuração e logging.
"""
