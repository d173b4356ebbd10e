#!/usr/bin/env python
"""The setup script."""

from setuptools import setup, find_packages

with open("README.rst") as readme_file:
    readme = readme_file.read()

requirements = [
    "networkx>=2.4",
    "pyyaml",
    "Click>=7.0,<9",
]

setup_requirements = []

test_requirements = ["pytest", "hypothesis"]

setup(
    author="Leonardo Barcaroli",
    author_email="leonardo.barcaroli@prima.it",
    python_requires=">=3.6",
    classifiers=[
        "Development Status :: 2 - Pre-Alpha",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: MIT License",
        "Natural Language :: English",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.6",
        "Programming Language :: Python :: 3.7",
        "Programming Language :: Python :: 3.8",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    description="Find and certify avoidable induced paths in graphs",
    entry_points={"console_scripts": ["avoidpath=avoidpath.cli:main",],},
    install_requires=requirements,
    extras_require={"test": test_requirements},
    license="MIT license",
    long_description=readme,
    include_package_data=True,
    keywords="avoidpath graph induced-path",
    name="avoidpath",
    packages=find_packages(include=["avoidpath", "avoidpath.*"]),
    setup_requires=setup_requirements,
    test_suite="tests",
    tests_require=test_requirements,
    version="0.1.0",
    zip_safe=False,
)
