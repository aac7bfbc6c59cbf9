#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""The setup script."""

from setuptools import setup, find_packages

with open('README.rst') as readme_file:
    readme = readme_file.read()

with open('HISTORY.rst') as history_file:
    history = history_file.read()

requirements = [
    'networkx>=2.2',
    'PyYAML>=5.1',
    'click>=7.0',
]

setup(
    author="David Seddon",
    author_email='david@seddonym.me',
    classifiers=[
        'Development Status :: 3 - Alpha',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: BSD License',
        'Natural Language :: English',
        'Programming Language :: Python :: 3',
        'Programming Language :: Python :: 3.8',
        'Programming Language :: Python :: 3.9',
        'Programming Language :: Python :: 3.10',
        'Programming Language :: Python :: 3.11',
        'Topic :: Scientific/Engineering :: Mathematics',
    ],
    description="Exact clique counting, matching numbers and shifting for uniform hypergraphs, "
                "with exhaustive verification of extremal bounds.",
    install_requires=requirements,
    python_requires='>=3.8',
    license="BSD license",
    long_description=readme + '\n\n' + history,
    include_package_data=True,
    keywords='hypergraph extremal-combinatorics matching clique shifting',
    name='hyperext',
    packages=find_packages(where="src"),
    package_dir={"": "src"},
    url='https://github.com/seddonym/hyperext',
    version='0.1.0',
    zip_safe=False,
    entry_points={
        'console_scripts': [
            'hyperext = hyperext.cmdline:main',
        ],
    },
)
