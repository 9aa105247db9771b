from setuptools import setup, find_packages

with open("README.md", "r", encoding="utf-8") as f:
    long_description = f.read()

setup(
    name="arboretum",
    version="0.1.0",
    description="Bass-Serre fields, free product verification and Kurosh decompositions of finite equivalence relations",
    long_description=long_description,
    long_description_content_type="text/markdown",
    classifiers=[
        "Intended Audience :: Science/Research",
        "Intended Audience :: Developers",
        "Topic :: Scientific/Engineering :: Mathematics",
        "Programming Language :: Python :: 3",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
    ],
    package_dir={"": "src"},
    packages=find_packages(where="src"),
    license="MIT",
    python_requires=">=3.9",
    install_requires=["numpy>=1.21.2", "scipy>=1.7.1", "pandas>=1.2.4", "networkx>=2.6"],
    extras_require={"graphs": ["treelib>=1.6.4"],
                    "test": ["pytest>=7.0", "hypothesis>=6.0", "treelib>=1.6.4"]},
    entry_points={"console_scripts": ["arboretum=arboretum.harness.cli:main"]},
    keywords=["equivalence relations", "free products", "amalgamated products", "Bass-Serre theory",
              "treeings", "Kurosh decomposition"],
)
