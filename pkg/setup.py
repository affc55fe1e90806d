from setuptools import find_packages, setup

setup(
    name="structura",
    version="0.1.0",
    description=(
        "Algebraic structures on finite sets and spaces, and their "
        "transport along adjunctions"
    ),
    packages=find_packages(exclude=["tests", "tests.*"]),
    python_requires=">=3.9",
    install_requires=[
        "canonicalwebteam.flask-base==3.1.1",
        "networkx==3.2.1",
        "ruamel.yaml==0.18.5",
        "werkzeug==2.3.8",
        "sentry-sdk==2.39.0",
    ],
    entry_points={"console_scripts": ["structura=structura.cli:run"]},
)
