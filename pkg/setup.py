from setuptools import setup

try:
    from Cython.Build import cythonize
    from setuptools import Extension

    ext_modules = cythonize(
        [Extension("qtwist._kernels", ["src/qtwist/_kernels.pyx"])],
        compiler_directives={"language_level": "3"},
    )
except ImportError:  # no Cython: the pure-Python kernel is used
    ext_modules = []

setup(ext_modules=ext_modules)
