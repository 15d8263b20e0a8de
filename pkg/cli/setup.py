import os

from setuptools import setup, find_packages


def read(fname):
    return open(os.path.join(os.path.dirname(__file__), fname)).read()


long_description = read('README.md') if os.path.isfile("README.md") else ""

setup(
    name='rotbox-metrics',
    version='0.1.0',
    description='Rotated bounding box IoU metrics and losses, with gradients, a Monte Carlo oracle, '
                'DOTA evaluation and a regression simulator',
    long_description=long_description,
    long_description_content_type='text/markdown',
    packages=find_packages(exclude=['tests']),
    classifiers=[
        'Development Status :: 4 - Beta',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: MIT License',
        'Programming Language :: Python :: 3',
        'Programming Language :: Python :: 3.8',
        'Programming Language :: Python :: 3.9',
        'Programming Language :: Python :: 3.10',
        'Programming Language :: Python :: 3.11'
    ],
    keywords='rotated bounding box iou oriented object detection',
    python_requires='>=3.8,<4',
    install_requires=[
        'click>=8.0,<9',
        'blockchain-etl-common==1.6.1',
        'numpy>=1.20',
    ],
    extras_require={
        'dev': [
            'pytest>=7.0',
            'hypothesis>=6.0'
        ]
    },
    entry_points={
        'console_scripts': [
            'rotbox=rotbox.cli:main',
        ],
    },
)
