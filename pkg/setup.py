from setuptools import Extension, setup
from Cython.Build import cythonize
import numpy as np


ext_module = Extension(
    "terminvar._kernels",
    ["src/terminvar/_kernels.pyx"],
    include_dirs=[np.get_include()],
)


setup(
    ext_modules=cythonize(ext_module, language_level=3),
)
