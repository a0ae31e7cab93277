#!/usr/bin/env python3
"""
Setup script for the NulLA certificate engine
"""

from setuptools import setup

with open("README.md", "r", encoding="utf-8") as fh:
    long_description = fh.read()

with open("requirements.txt", "r", encoding="utf-8") as fh:
    requirements = [line.strip() for line in fh if line.strip() and not line.startswith("#")]

setup(
    name="nulla-graph-certificates",
    version="1.0.0",
    description="Exact Nullstellensatz infeasibility certificates for graph problems",
    long_description=long_description,
    long_description_content_type="text/markdown",
    py_modules=[
        "settings",
        "errors",
        "poly",
        "graphs",
        "oracles",
        "formats",
        "encoders",
        "linsolve",
        "nulla",
        "enumcert",
        "nulla_cli",
    ],
    classifiers=[
        "Development Status :: 4 - Beta",
        "Intended Audience :: Science/Research",
        "Topic :: Scientific/Engineering :: Mathematics",
        "License :: OSI Approved :: MIT License",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
        "Programming Language :: Python :: 3.12",
    ],
    python_requires=">=3.9",
    install_requires=requirements,
    entry_points={
        "console_scripts": [
            "nulla=nulla_cli:main",
        ],
    },
    keywords="nullstellensatz, nulla, graph theory, combinatorics, certificates, exact arithmetic",
)
