"""Build script: compiles the lattice-summation kernels when a C toolchain
is available.  The package works without the extension (a NumPy fallback is
selected at import), so the extension is marked optional."""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "wittenloc._latkernels",
                ["src/wittenloc/_latkernels.pyx"],
                extra_compile_args=["-O3"],
                optional=True,
            )
        ],
        language_level=3,
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
