"""Builds the compiled extension behind the sgbalance package.

The extension compiles the same translation units as the CMake library
target, so the wheel needs no pre-built artifacts.
"""

from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

ext = Pybind11Extension(
    "sgbalance._core",
    sources=[
        "bindings/module.cpp",
        "src/graph.cpp",
        "src/micro.cpp",
        "src/frustration.cpp",
        "src/meso.cpp",
        "src/ingest.cpp",
        "src/report.cpp",
    ],
    include_dirs=["include", "vendor"],
    cxx_std=20,
)

setup(ext_modules=[ext], cmdclass={"build_ext": build_ext})
