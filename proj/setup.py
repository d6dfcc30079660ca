from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

core_sources = [
    "python/bindings.cpp",
    "src/geometry.cpp",
    "src/world.cpp",
    "src/rrt.cpp",
    "src/tree_ops.cpp",
    "src/multistage.cpp",
    "src/baselines.cpp",
    "src/bench.cpp",
    "src/trace.cpp",
]

setup(
    ext_modules=[
        Pybind11Extension(
            "replan2d._core",
            core_sources,
            include_dirs=["src", "vendor"],
            cxx_std=20,
        )
    ],
    cmdclass={"build_ext": build_ext},
)
