"""Build hook for the optional compiled F_p kernel.

If Cython or a C compiler is unavailable the package still installs and
falls back to the pure-Python kernels at import time.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    import numpy as np
    from Cython.Build import cythonize
except ImportError:
    pass
else:
    ext_modules = cythonize(
        [
            Extension(
                "lieposet._fpkernel",
                ["src/lieposet/_fpkernel.pyx"],
                include_dirs=[np.get_include()],
                extra_compile_args=["-O3"],
                define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
