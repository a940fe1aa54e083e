"""Build script. Compiles the optional polynomial kernel if Cython is present.

The package works without the compiled extension: ncmac.rings falls back to a
pure-Python kernel at import time.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize
    ext_modules = cythonize(
        "src/ncmac/_poly_kernel.pyx",
        language_level=3,
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
