import pathlib
from setuptools import setup, find_namespace_packages

try:
    import re2 as re
except ImportError:
    import re

base_package = "convexshape"

# The directory containing this file
HERE = pathlib.Path(__file__).parent

# The text of the README file
README = (HERE / "README.md").read_text()

# Pull the version from __init__.py so we don't need to maintain it in multiple places
init_txt = (HERE / base_package / "__init__.py").read_text("utf-8")
try:
    version = re.findall(r"^__version__ = ['\"]([^'\"]+)['\"]\r?$", init_txt, re.M)[0]
except IndexError:
    raise RuntimeError('Unable to determine version.')

setup(
    name="convexshape",
    version=version,
    description="Shape optimization with convexity constraints on simplicial meshes",
    long_description=README,
    long_description_content_type="text/markdown",
    license="MIT",
    classifiers=[
        "License :: OSI Approved :: MIT License",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    entry_points={
        'console_scripts': [
            'convexshape = convexshape.entry_points:main',
        ],
    },
    packages=find_namespace_packages(include=[base_package, f"{base_package}.*"]),
    include_package_data=False,
    python_requires=">=3.9",
    install_requires=["numpy", "scipy>=1.12", "sympy", "PyYAML", "lxml", "bidict", "humanize"],
    extras_require={
        "fast": ["ujson"],
        "test": ["pytest"],
    },
)
