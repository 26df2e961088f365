from __future__ import print_function

import sys
import os

try:
    from setuptools import setup
except ImportError:
    sys.exit('ERROR: setuptools is required.\nTry using "pip install setuptools".')

# use README.rst for the long description
with open('README.rst') as fh:
    long_description = fh.read()

# scan the package for the version string
version_file = 'hanoiwalk/__init__.py'
version = None
with open(version_file) as fh:
    try:
        version = [line.split('=')[1].strip().strip("'") for line in fh if line.startswith('__version__')][0]
    except IndexError:
        pass

if version is None:
    raise RuntimeError('Unable to find version string in file: {0}'.format(version_file))


# Optional "--work-budget=<amplitude-steps>" to set the installed default limit
work_budget = None
for arg in list(sys.argv):
    if arg.startswith('--work-budget='):
        work_budget = arg.split('=', 1)[1]
        sys.argv.remove(arg)


# Subclass build_py command to add our own hook to write a config file
from setuptools.command.build_py import build_py as _build_py

class build_py(_build_py):
    def run(self):
        cfg_path = os.path.join(self.build_lib, 'hanoiwalk', 'hanoiwalk.cfg')
        self.mkpath(os.path.dirname(cfg_path))
        print('Writing Hanoiwalk configuration file: {}'.format(cfg_path))
        self.write_config(cfg_path, work_budget)

        # Read back the config file for verification
        with open(cfg_path, 'r') as f:
            for line in f:
                print('  >', line.rstrip())

        return _build_py.run(self)

    def write_config(self, cfg_path, work_budget):
        import configparser as cp

        config = cp.ConfigParser()
        config.add_section('limits')
        if work_budget is not None:
            config.set('limits', 'work_budget', str(float(work_budget)))

        with open(cfg_path, 'w') as fh:
            config.write(fh)


setup(name='hanoiwalk',
    version=version,
    author='The Hanoiwalk developers',
    description='Quantum walk search simulator for Hanoi networks of degree four',
    long_description=long_description,
    install_requires = ['numpy >= 1.17.0', 'scipy >= 1.4.0', 'networkx >= 2.4'],
    extras_require = {
        'color': ['colorama'],
        'xml': ['unittest-xml-reporting']
    },
    packages = ['hanoiwalk', 'hanoiwalk.io', 'hanoiwalk.util'],
    py_modules = ['hanoi_search'],
    cmdclass = {'build_py': build_py},
    entry_points = {
        'console_scripts': ['hanoi_search = hanoi_search:main']
    },

    include_package_data = True,
    package_data = {
        '': ['*.cfg']
    },

    python_requires = '>=3.6',
    test_suite = 'test',

    keywords='quantum walk spatial search Hanoi network simulation',
    license='LGPLv3',
    classifiers=['Development Status :: 4 - Beta',
        'Operating System :: OS Independent',
        'Intended Audience :: Science/Research',
        'Natural Language :: English',
        'Programming Language :: Python :: 3',
        'License :: OSI Approved :: GNU Lesser General Public License v3 (LGPLv3)',
        'Topic :: Scientific/Engineering :: Physics',
        'Topic :: Software Development :: Libraries :: Python Modules'
        ]

    )
