from cloudmesh.hypercomplex.__version__ import version

__version__ = version
