from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:  # pure-Python install; kernels.py falls back at import
    ext_modules = []
else:
    ext_modules = cythonize(
        [Extension("hopfsmash._ckernels", ["src/hopfsmash/_ckernels.pyx"], optional=True)],
        compiler_directives={"language_level": 3},
    )

setup(ext_modules=ext_modules)
