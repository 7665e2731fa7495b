from setuptools import setup, find_packages

setup(
    name="riordan_tp",
    version="0.1.0",
    packages=find_packages(exclude=["tests", "examples", "examples.*"]),
    package_data={"src.verify": ["data/*.json"]},
    install_requires=[
        "langgraph>=0.0.15",
        "numpy>=1.24",
        "pydantic>=2.0.0",
        "pyparsing>=3.0.0",
        "python-dotenv>=1.0.0",
    ],
    extras_require={
        "test": ["sympy>=1.12"],
    },
    entry_points={
        "console_scripts": [
            "riordan-tp=src.cli.commands:main",
        ],
    },
    python_requires=">=3.9",
    description="Exact Riordan, quasi-Riordan and almost-Riordan arrays with total-positivity checks",
    author="Riordan TP Team",
)
