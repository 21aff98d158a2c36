from pathlib import Path

from setuptools import find_packages, setup

if __name__ == "__main__":
    with Path(Path(__file__).parent, "README.md").open(encoding="utf-8") as file:
        long_description = file.read()

    REQUIREMENTS = [
        "numpy>=1.26.0",
        "scipy>=1.11",
        "pydantic>=2.0",
        "tqdm",
    ]

    DEV = [
        "pytest",
        "black",
        "mypy",
        "pylint",
    ]

    setup(
        name="bezKit",
        packages=find_packages(exclude=["tests", "examples*"]),
        include_package_data=True,
        version="0.1.0",
        license="MIT",
        description="Exact Bezout matrices, Hankel inverses, implicitization and vessel checks for plane curves",
        long_description=long_description,
        long_description_content_type="text/markdown",
        data_files=[(".", ["README.md"])],
        keywords=["computer algebra", "bezoutian", "implicitization"],
        install_requires=REQUIREMENTS,
        extras_require={
            "dev": DEV,
        },
        entry_points={
            "console_scripts": ["bezkit = bezKit.cli.main:main"],
        },
        classifiers=[
            "Development Status :: 4 - Beta",
            "Intended Audience :: Science/Research",
            "Topic :: Scientific/Engineering :: Mathematics",
            "License :: OSI Approved :: MIT License",
            "Programming Language :: Python :: 3.10",
        ],
    )
