import sys

from setuptools import Extension, setup

# The compiled kernel is optional: the package falls back to the pure-Python
# twin when the extension is unavailable (see cvckit.backend).
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("cvckit._kernel", ["src/cvckit/_kernel.pyx"])],
        language_level=3,
        compiler_directives={"boundscheck": False, "wraparound": False},
    )
except Exception as exc:  # pragma: no cover
    print(f"warning: skipping compiled kernel build ({exc})", file=sys.stderr)
    ext_modules = []

setup(ext_modules=ext_modules)
