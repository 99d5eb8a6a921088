"""pyfekete"""

import os

from setuptools import find_packages, setup

here = os.path.abspath(os.path.dirname(__file__))

with open(os.path.join("README.md"), "r") as fh:
    long_description = fh.read()

const = {}
with open(os.path.join("pyfekete", "const.py"), "r") as fp:
    exec(fp.read(), const)

setup(
    name=const["__title__"],
    version=const["__version__"],
    description="Numerical verification suites for the Mahler measure of Fekete polynomials",
    long_description=long_description,
    long_description_content_type="text/markdown",
    license="ASL 2.0",
    packages=find_packages(exclude=("tests", "tests.*")),
    install_requires=["numpy>=1.20", "scipy>=1.6"],
    tests_require=["tox>=3.5.0,<4.0.0"],
    entry_points={"console_scripts": ["pyfekete=pyfekete.cli:main"]},
    python_requires=">=3.7",
    platforms=["any"],
    keywords="fekete mahler-measure littlewood polynomials",
    zip_safe=False,
    classifiers=[
        "Development Status :: 4 - Beta",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: Apache Software License",
        "Operating System :: OS Independent",
        "Topic :: Scientific/Engineering :: Mathematics",
        "Programming Language :: Python :: 3.7",
        "Programming Language :: Python :: 3.8",
        "Programming Language :: Python :: 3.9",
    ],
)
