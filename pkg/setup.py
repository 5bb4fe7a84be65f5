from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [Extension("treedescents._kernels", ["src/treedescents/_kernels.pyx"])],
        language_level=3,
    )
except ImportError:
    # Without Cython the package installs pure-Python only; the kernel
    # dispatcher falls back automatically.
    extensions = []

setup(ext_modules=extensions)
