#!/usr/bin/env python3
from setuptools import find_packages, setup

# Read the contents of README.md file
with open("README.md", encoding="utf-8") as f:
    long_description = f.read()

# Core requirements
CORE_REQUIREMENTS = [
    "langgraph>=0.2.0",
    "python-dotenv>=1.0.0",
    "pydantic>=2.4.2",
    "pydantic-settings>=2.0.3",
    "numpy>=1.24.0",
]

# Development requirements
DEV_REQUIREMENTS = [
    "pytest>=7.4.3",
    "pytest-asyncio>=0.21.1",
    "black>=23.10.1",
    "isort>=5.12.0",
    "flake8>=6.1.0",
    "mypy>=1.6.1",
]

# Testing requirements
TEST_REQUIREMENTS = [
    "pytest>=7.4.3",
    "pytest-asyncio>=0.21.1",
    "pytest-cov>=4.1.0",
]

setup(
    name="z4-poset-codes",
    version="0.1.0",
    description="Quaternary codes from order ideals of a two-chain poset: Lee weights, Gray images and linearity",
    long_description=long_description,
    long_description_content_type="text/markdown",
    packages=find_packages(exclude=["tests*"]),
    py_modules=["main"],
    python_requires=">=3.10",
    install_requires=CORE_REQUIREMENTS,
    extras_require={
        "dev": DEV_REQUIREMENTS,
        "test": TEST_REQUIREMENTS,
        "all": DEV_REQUIREMENTS + TEST_REQUIREMENTS,
    },
    entry_points={
        "console_scripts": [
            "z4-poset-codes=app.cli:main",
        ],
    },
    classifiers=[
        "Development Status :: 4 - Beta",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: MIT License",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    keywords=["coding theory", "z4", "lee weight", "gray map", "poset"],
    include_package_data=True,
    zip_safe=False,
    license="MIT",
    package_dir={'': '.'}
)
