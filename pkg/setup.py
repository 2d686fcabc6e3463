import codecs
import os
import re

from pkg_resources import parse_requirements
from setuptools import find_packages, setup

here = os.path.abspath(os.path.dirname(__file__))

with open("requirements.txt") as requirements_file:
    install_requires = list(map(str, parse_requirements(requirements_file)))

# loading version from setup.py
with codecs.open(os.path.join(here, "sbmrecovery/__init__.py"), encoding="utf-8") as init_file:
    version_match = re.search(r"^__version__ = ['\"]([^'\"]*)['\"]", init_file.read(), re.MULTILINE)
    version_string = version_match.group(1)

extras = {}

with open("requirements-dev.txt") as dev_requirements_file:
    extras["dev"] = list(map(str, parse_requirements(dev_requirements_file)))

extras["all"] = extras["dev"]

setup(
    name="sbmrecovery",
    version=version_string,
    description="Partial-recovery bounds, decoders and Monte Carlo checks for the two-community block model",
    long_description="Information-theoretic partial-recovery bounds for the symmetric two-community sparse "
    "stochastic block model, the decoders they analyze, and a seeded simulation harness to check them.",
    author="sbmrecovery contributors",
    packages=find_packages(exclude=["tests", "tests.*", "benchmarks"]),
    include_package_data=True,
    license="MIT",
    install_requires=install_requires,
    extras_require=extras,
    python_requires=">=3.9",
    classifiers=[
        "Development Status :: 4 - Beta",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: MIT License",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
        "Programming Language :: Python :: 3.12",
        "Topic :: Scientific/Engineering",
        "Topic :: Scientific/Engineering :: Mathematics",
        "Topic :: Scientific/Engineering :: Information Analysis",
    ],
    entry_points={
        "console_scripts": [
            "sbm-bounds = sbmrecovery.cli.run_bounds:main",
            "sbm-simulate = sbmrecovery.cli.run_simulate:main",
            "sbm-sweep = sbmrecovery.cli.run_sweep:main",
            # dump one labeled instance as an edge list
            "sbm-generate = sbmrecovery.cli.run_generate:main",
        ]
    },
    keywords="stochastic block model, community detection, partial recovery, minimum bisection, monte carlo",
)
