from setuptools import setup, find_packages
from pathlib import Path

this_directory = Path(__file__).parent
long_description = (this_directory / "README.md").read_text()

setup(
    name="fibtile",
    version="0.1.0",
    description="Fibonacci-colored compositions, their bijections and brute-force checkers",
    author="fibtile developers",
    packages=find_packages(include=["fibtile", "fibtile.*"]),
    long_description=long_description,
    long_description_content_type="text/markdown",
    python_requires=">=3.8",
    install_requires=[
        "numpy",
        "scipy>=1.6",
    ],
    extras_require={
        "test": ["pytest", "hypothesis"],
    },
    entry_points={
        "console_scripts": [
            "fibtile = fibtile.cli:main",
        ],
    },
)
