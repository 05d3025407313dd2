#!/usr/bin/env python3
"""
Setup script for the GEPU toolkit
"""
from pathlib import Path

from setuptools import find_packages, setup


def read_requirements():
    """Runtime requirements (everything above the testing block)"""
    lines = Path(__file__).with_name("requirements.txt").read_text(encoding="utf-8").splitlines()
    requirements = []
    for line in lines:
        if line.strip() == "# Testing":
            break
        line = line.split("#", 1)[0].strip()
        if line:
            requirements.append(line)
    return requirements


setup(
    name="gepu-pca",
    version="0.1.0",
    description="Rolling-window PCA global economic policy uncertainty index and market regressions",
    long_description=Path(__file__).with_name("README.md").read_text(encoding="utf-8"),
    long_description_content_type="text/markdown",
    packages=find_packages(include=["src", "src.*"]),
    python_requires=">=3.9",
    install_requires=read_requirements(),
    extras_require={"test": ["pytest>=7.0.0"]},
    entry_points={"console_scripts": ["gepu=src.main:main"]},
)
