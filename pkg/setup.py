from setuptools import find_packages, setup

setup(
    name='charvar_betti',
    packages=find_packages(exclude=['tests']),
    version='0.1.0',
    description='Stable Betti numbers of universal PGL, SL and GL character varieties.',
    install_requires=[
        'click>=8.0',
        'pandas>=1.5',
        'python-dotenv>=1.0.0',
        'xlsxwriter>=3.1.2',
    ],
    extras_require={
        'test': ['sympy>=1.10'],
    },
    entry_points="""
        [console_scripts]
        charvar=charvar_betti.cli:main
    """,
)
