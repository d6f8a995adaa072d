from Cython.Build import cythonize
from setuptools import Extension, setup

# -ffast-math must stay off: the benchmark contract requires the compiled
# loops to be bitwise-identical to the interpreted ones, which rules out
# any reassociation of the floating-point accumulations.
extensions = [
    Extension(
        "tenkern._ckernels",
        ["src/tenkern/_ckernels.pyx"],
        extra_compile_args=["-O3"],
    )
]

setup(
    ext_modules=cythonize(
        extensions,
        compiler_directives={"language_level": "3"},
    )
)
