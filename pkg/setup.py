from setuptools import setup, find_packages

setup(
    name='fsingular',
    version='0.1.0',
    package_dir={'': 'src'},
    packages=find_packages(where='src'),
    install_requires=[
         "pandas", "tabulate", "numpy", "sympy", "pyparsing>=3.0"
    ],
    extras_require={
        "all": [],
        "test": ["pytest", "pytest-cov"],
    },
    entry_points={
        'console_scripts': ['fsingular=fsingular.cli:main'],
    },
    description='Frobenius singularity invariants in prime characteristic',
    license='MIT',
    keywords='Frobenius F-pure threshold test ideal Fedder prime characteristic',
)
