from setuptools import setup, Extension

# The compiled series kernel is optional: the package falls back to the
# pure-Python implementation in pcfzeros._kernels.pure when the extension
# is missing or fails to build.
try:
    from Cython.Build import cythonize
    ext_modules = cythonize(
        [Extension("pcfzeros._kernels._useries",
                   ["src/pcfzeros/_kernels/_useries.pyx"])],
        compiler_directives={"boundscheck": False, "cdivision": True},
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
