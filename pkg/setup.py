"""
This sets up the library as a pip module named "orderspace".
Files can then resolve imports from package root, and the `orderspace`
console script runs `orderspace/app.py`.
"""
from setuptools import setup, find_packages

setup(
    name="orderspace",
    version="0.0",
    packages=find_packages(include=["orderspace", "orderspace.*"]),
    install_requires=["numpy", "tabulate", "tomli>=2"],
    entry_points={
        "console_scripts": [ "orderspace=orderspace.app:main" ],
    },
)
