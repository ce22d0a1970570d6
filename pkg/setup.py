import sys
from setuptools import setup, find_packages

# dependencies
install_requires = [
    "numpy>=1.22",
    "scipy>=1.8",
]
if sys.version_info < (3, 11):
    install_requires.append("tomli")

setup(
    name='sfmaslov',
    version='1.0.0',
    description='Spectral flow of paths of symmetric forms, Maslov indices via graph charts and coisotropic '
                'reduction, verified as exact integer identities.',
    license='Apache 2.0',
    long_description=open('README.md').read(),
    long_description_content_type='text/markdown',
    packages=find_packages(include=['src', 'src.*']),
    install_requires=install_requires,
    entry_points={
        'console_scripts': [
            'sfmaslov=src.main:main',
        ],
    },
    classifiers=[
        'Development Status :: 4 - Beta',
        'Intended Audience :: Science/Research',
        'Topic :: Scientific/Engineering :: Mathematics',
        'Programming Language :: Python :: 3',
        'Programming Language :: Python :: 3.10',
        'Programming Language :: Python :: 3.11',
        'Programming Language :: Python :: 3.12',
        'Programming Language :: Python :: 3.13',
        'License :: OSI Approved :: Apache Software License',
    ],
    python_requires='>=3.10',
)
