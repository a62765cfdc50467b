import os

from setuptools import setup


def read(*paths):
    """Build a file path from *paths* and return the contents."""
    with open(os.path.join(*paths), 'r') as f:
        return f.read()

# Meta information
DESCRIPTION = ("Python package for computing the lattices of Racah " +
               "submodules of finite-dimensional irreducible modules of the " +
               "universal additive DAHA of type (C1v, C1), in exact arithmetic.")

CLASSIFIERS = ['Development Status :: 3 - Alpha',
               'Intended Audience :: Education',
               'Intended Audience :: Science/Research',
               'License :: OSI Approved :: MIT License',
               'Operating System :: OS Independent',
               'Programming Language :: Python',
               'Programming Language :: Python :: 3',
               'Topic :: Scientific/Engineering :: Mathematics',
               ]

PACKAGES = ['pyracah', 'pyracah.algebras', 'pyracah.lattices',
            'pyracah.linalg', 'pyracah.modules',
            'pyracah.tests', 'pyracah.tests.models']

setup(
    name="pyracah",
    packages=PACKAGES,
    version='0.1.0',
    description=DESCRIPTION,
    long_description=read('README.rst'),
    license="MIT License",
    author="davidrpugh",
    author_email="david.pugh@maths.ox.ac.uk",
    classifiers=CLASSIFIERS,
    python_requires='>=3.8',
    install_requires=['numpy>=1.17', 'sympy>=1.12'],
    extras_require={'testing': ['pytest', 'hypothesis']},
    entry_points={'console_scripts': ['pyracah=pyracah.cli:main']},
    )
