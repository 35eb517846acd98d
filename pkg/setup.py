from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "cyclopadic._kernels",
                ["src/cyclopadic/_kernels.pyx"],
                optional=True,
            )
        ],
        language_level="3",
    )
except ImportError:
    # no Cython: install pure-Python only, the kernel fallback kicks in
    ext_modules = []

setup(ext_modules=ext_modules)
