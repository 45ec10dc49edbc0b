#!/usr/bin/env python3
"""
schur-euclid setup script
"""

from pathlib import Path

from setuptools import find_packages, setup

ROOT = Path(__file__).parent


def read_requirements(path):
    """Requirement lines without comments or blanks"""
    lines = (ROOT / path).read_text().splitlines()
    return [line.strip() for line in lines if line.strip() and not line.startswith("#")]


setup(
    name="schur-euclid",
    version="1.0.0",
    description="Exact Euclidean division of formal power series and its Schur-function closed forms",
    long_description=(ROOT / "README.md").read_text(),
    long_description_content_type="text/markdown",
    packages=find_packages(include=["schur_euclid", "schur_euclid.*"]),
    python_requires=">=3.9",
    install_requires=read_requirements("requirements.txt"),
    extras_require={"test": read_requirements("automation/requirements.txt")},
    entry_points={"console_scripts": ["schur-euclid=schur_euclid.main:main"]},
)
