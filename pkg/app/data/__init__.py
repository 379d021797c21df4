"""Dados iniciais, amostragem aleatória e persistência de campos."""
