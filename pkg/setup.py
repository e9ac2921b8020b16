from setuptools import Extension, setup

# The compiled scan kernel is optional: if Cython or a C compiler is missing
# the package falls back to the pure-Python kernels at import time.
try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "measurext._fastscan",
                ["src/measurext/_fastscan.pyx"],
                optional=True,
            )
        ],
        language_level=3,
    )

setup(ext_modules=ext_modules)
