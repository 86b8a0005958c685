from pathlib import Path
from setuptools import setup


this_directory = Path(__file__).parent
long_description = (this_directory / "README.md").read_text()


__version__ = "0.1.0"

setup(
    name="gsp4_local_zeta",
    version=__version__,
    description="Exact verification of the unramified local zeta integral for the degree-five L-function of GSp(4).",
    classifiers=[
        "Development Status :: 4 - Beta",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: MIT License",
        "Programming Language :: Python",
        "Topic :: Scientific/Engineering :: Mathematics",
        "Operating System :: OS Independent",
        "Programming Language :: Python :: 3 :: Only",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.9",
    ],
    license='MIT',
    long_description=long_description,
    long_description_content_type='text/markdown',
    zip_safe=False,
    python_requires=">=3.8",
    packages=['gsp4_local_zeta'],
    install_requires=[
          'numpy',
          'sympy',
          'Jinja2'
      ],
    extras_require={
          'test': ['pytest', 'hypothesis'],
      },
    entry_points={
          'console_scripts': ['gsp4-local-zeta=gsp4_local_zeta.cli:main'],
      },
)
