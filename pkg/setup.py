"""Setup file para instalação via pip sem poetry."""

from setuptools import setup, find_packages

setup(
    name="fourier-lorentz-nse",
    version="0.1.0",
    packages=find_packages(exclude=("tests", "tests.*")),
    install_requires=[
        "numpy>=1.26.0",
        "scipy>=1.11.0",
        "pandas>=2.1.0",
        "pyyaml>=6.0",
        "python-dotenv>=1.0.0",
        "click>=8.1.0",
    ],
    entry_points={"console_scripts": ["fl-nse=app.main:cli"]},
    python_requires=">=3.10,<3.13",
)
