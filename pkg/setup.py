"""Setup for the hiertect package."""

import setuptools

dependencies = ['numpy', 'scipy']
extras = {'tests': ['pytest']}
packages = ['hiertect', 'hiertect.core', 'hiertect.lib', 'hiertect.utils',
            'hiertect.config']

with open('README.md', encoding='utf-8') as f:
    README = f.read()

setuptools.setup(
    name = 'hiertect',
    license = 'GPLv3',
    description = ('Hierarchy learning and transform-domain detection of '
                   'structured activations in networks'),
    version = 'v0.1.0',
    long_description = README,
    long_description_content_type = 'text/markdown',
    packages = packages,
    python_requires = '>=3.8',
    install_requires = dependencies,
    extras_require = extras,
    entry_points = {
        'console_scripts': ['hiertect = hiertect.cli:main'],
    },
    classifiers = [
        # Trove classifiers
        # (https://pypi.python.org/pypi?%3Aaction=list_classifiers)
        'Development Status :: 3 - Alpha',
        'License :: OSI Approved :: GNU General Public License v3 (GPLv3)',
        'Programming Language :: Python :: 3',
        'Topic :: Software Development :: Libraries :: Python Modules',
        'Topic :: Scientific/Engineering :: Mathematics',
        'Topic :: Scientific/Engineering :: Information Analysis',
        'Intended Audience :: Science/Research',
        'Intended Audience :: Education'
    ],
)
