"""Laboratório de soluções brandas de Navier–Stokes em espaços de Sobolev–Fourier–Lorentz."""

__version__ = "0.1.0"
