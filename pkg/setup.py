#!/usr/bin/env python
from setuptools import setup

setup(
    name="jostlab",
    use_scm_version={"write_to": "jostlab/version.py"},
    description="Numerical experiments on Jost functions of Jacobi matrices.",
    packages=[
        "jostlab",
        "jostlab.asymptotics_lab",
        "jostlab.blaschke",
        "jostlab.cli",
        "jostlab.determinants",
        "jostlab.jacobi_core",
        "jostlab.poisson",
        "jostlab.recursions",
        "jostlab.scripts",
        "jostlab.weyl_m",
    ],
    entry_points={
        "console_scripts": ["jostlab=jostlab.scripts.jostlab_cli:main_entry_point"]
    },
    license="GPL-3.0",
    platforms="any",
    classifiers=[
        "Development Status :: 1 - Planning",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: GNU General Public License v3 or later (GPLv3+)",
        "Natural Language :: English",
        "Programming Language :: Python",
        "Programming Language :: Python :: 3.6",
        "Programming Language :: Python :: 3.7",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    install_requires=["configsuite<0.6", "numpy", "pandas", "pyyaml", "scipy"],
    setup_requires=["setuptools_scm"],
)
