from setuptools import setup

setup(
	name='unitarylm',
	packages=['unitarylm', 'unitarylm.weyl', 'unitarylm.bruhat', 'unitarylm.faces', 'unitarylm.permissibility', 'unitarylm.spin', 'unitarylm.harness', 'unitarylm.cli'],
	version='0.1.1',
	description='Admissible, permissible and spin-permissible sets for unitary, symplectic and linear affine Weyl groups.',
	long_description='See README.md',
	license='MIT',
	keywords=['affine Weyl group', 'Bruhat order', 'admissible set', 'local model', 'unitary group'],
	python_requires='>=3.6',
	install_requires=['sympy'],
	entry_points={
		'console_scripts': ['unitarylm = unitarylm.cli.main:main']
	}
	)
