import os

from setuptools import setup

ext_modules = []
if os.environ.get("ORBIBUNDLE_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize
        from setuptools import Extension
    except ImportError:
        pass
    else:
        ext_modules = cythonize(
            [Extension("orbibundle.linalg._smith_core", ["src/orbibundle/linalg/_smith_core.pyx"])],
            compiler_directives={"language_level": "3", "boundscheck": False, "wraparound": False},
        )

setup(ext_modules=ext_modules)
