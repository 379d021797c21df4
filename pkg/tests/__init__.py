"""Testes do laboratório Fourier–Lorentz NSE."""
