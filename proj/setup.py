"""CMake-driven build of the pybind11 extension.

The wheel carries only the extension and the python package; the CLI and
the C++ test suites stay a plain CMake affair.
"""

import os
import subprocess
import sys
from pathlib import Path

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class CMakeExtension(Extension):
    def __init__(self, name: str, sourcedir: str = "") -> None:
        super().__init__(name, sources=[])
        self.sourcedir = os.fspath(Path(sourcedir).resolve())


class CMakeBuild(build_ext):
    def build_extension(self, ext: CMakeExtension) -> None:
        ext_fullpath = Path.cwd() / self.get_ext_fullpath(ext.name)
        extdir = ext_fullpath.parent.resolve()

        cmake_args = [
            f"-DCMAKE_LIBRARY_OUTPUT_DIRECTORY={extdir}{os.sep}",
            f"-DPYTHON_EXECUTABLE={sys.executable}",
            f"-DPython3_EXECUTABLE={sys.executable}",
            "-DCMAKE_BUILD_TYPE=Release",
            "-DSUMSET_MINIMAX_PYTHON_ONLY=ON",
        ]

        build_temp = Path(self.build_temp) / ext.name
        build_temp.mkdir(parents=True, exist_ok=True)

        env = dict(os.environ, SUMSET_MINIMAX_WHEEL="1")
        subprocess.run(
            ["cmake", ext.sourcedir, *cmake_args], cwd=build_temp, env=env, check=True
        )
        subprocess.run(
            ["cmake", "--build", ".", "--target", "_core", "-j"],
            cwd=build_temp,
            env=env,
            check=True,
        )


setup(
    ext_modules=[CMakeExtension("sumset_minimax._core")],
    cmdclass={"build_ext": CMakeBuild},
)
