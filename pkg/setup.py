from setuptools import setup, find_packages


def version():
    with open('VERSION') as f:
        return f.read().strip()


def readme():
    with open('README.md', 'rb') as f:
        return f.read().decode('utf-8', errors='ignore')


reqs = [line.strip() for line in open('requirements.txt') if line.strip() and not line.startswith('#')]


setup(
    name                = "homcolor",
    version             = version(),
    description         = "Homogeneous edge-colorings of multigraphs: constructions, verification and exact search",
    long_description    = readme(),
    long_description_content_type = 'text/markdown',
    license             = 'MIT',
    author              = "homcolor contributors",
    packages            = find_packages(),
    install_requires    = reqs,
    entry_points        = {
        'console_scripts': ['homcolor=homcolor.cli:main'],
    },
    classifiers         = [
        'Development Status :: 3 - Alpha',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: MIT License',
        'Programming Language :: Python :: 3',
        'Topic :: Scientific/Engineering :: Mathematics',
    ],
    include_package_data = True,
)
