import numpy
from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "pucciradial._kernel_cy",
                ["src/pucciradial/_kernel_cy.pyx"],
                include_dirs=[numpy.get_include()],
                extra_compile_args=["-O3"],
                optional=True,
            )
        ],
        language_level=3,
    )
except ImportError:
    # No Cython available: the package falls back to the pure-Python kernel.
    ext_modules = []

setup(ext_modules=ext_modules)
