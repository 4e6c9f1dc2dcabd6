from setuptools import Extension, setup

# The compiled kernels are optional: without Cython (or a working C
# compiler) the package installs anyway and falls back to the pure-Python
# twins in partmaps._pykernels.
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("partmaps._ckernels", ["src/partmaps/_ckernels.pyx"])],
        language_level=3,
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
