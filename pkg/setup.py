"""
Setup script for the polyadic ring toolkit.
"""
from setuptools import setup

with open("README.md", "r", encoding="utf-8") as fh:
    long_description = fh.read()

with open("requirements.txt", "r", encoding="utf-8") as fh:
    requirements = fh.read().splitlines()

setup(
    name="polyadic-residue-rings",
    version="1.0.0",
    author="Polyadic Residue Rings Team",
    author_email="example@example.com",
    description="Exact construction and verification of (m,n)-rings from integer and p-adic residue classes",
    long_description=long_description,
    long_description_content_type="text/markdown",
    url="https://github.com/example/polyadic-residue-rings",
    py_modules=["cli", "main", "models", "padic_core", "padic_polyadic", "residue_core", "utils"],
    classifiers=[
        "Development Status :: 4 - Beta",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
        "Programming Language :: Python :: 3.12",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    python_requires=">=3.10",
    install_requires=requirements,
    entry_points={
        "console_scripts": [
            "polyadic-rings=cli:main",
        ],
    },
)
