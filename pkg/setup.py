from setuptools import setup

with open("README.md", "r") as fh:
    long_description = fh.read()

requires = []
with open('requirements.txt') as f:
    for line in f.readlines():
        line = line.strip()  # Remove spaces
        line = line.split('#')[0]  # Remove comments
        if line:  # Remove empty lines
            requires.append(line)

setup(
    name='monomial-acm',
    version='1.0.0',
    packages=['monomial_acm'],
    package_dir={'': 'src'},
    license='BSD 3-clause "New" or "Revised" License',
    description='Depth, dimension and almost Cohen-Macaulay tests for monomial ideals and simplicial complexes',
    long_description=long_description,
    long_description_content_type="text/markdown",
    install_requires=requires,
    entry_points={
        'console_scripts': ['monomial-acm = monomial_acm.cli:main'],
    }
)
