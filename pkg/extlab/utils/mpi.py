""" MPI helpers; without mpi4py every call behaves as a single-rank run. """

import numpy as np

try:
    from mpi4py import MPI
except ImportError:
    MPI = None

from .info_dict import Info


def mpi_rank():
    return MPI.COMM_WORLD.Get_rank() if MPI is not None else 0


def mpi_size():
    return MPI.COMM_WORLD.Get_size() if MPI is not None else 1


def mpi_shard(items, rank=None, size=None):
    """ Yields (index, item) for the items owned by @rank: index % size == rank. """
    rank = mpi_rank() if rank is None else rank
    size = mpi_size() if size is None else size
    for index, item in enumerate(items):
        if index % size == rank:
            yield index, item


def mpi_gather(x):
    """ List of every rank's @x on the chef, None elsewhere. """
    if mpi_size() == 1:
        return [x]
    buf = MPI.COMM_WORLD.gather(x, root=0)
    return buf if MPI.COMM_WORLD.rank == 0 else None


def mpi_gather_info(info):
    """ Merges the Info of every rank on the chef. """
    buf = mpi_gather(info)
    if buf is None:
        return None
    merged = Info()
    for data in buf:
        merged.add(data)
    return merged


def _mpi_sum(x):
    buf = np.zeros_like(x)
    MPI.COMM_WORLD.Allreduce(x, buf, op=MPI.SUM)
    return buf


# Sum over the cpu's data
def mpi_sum(x):
    if mpi_size() == 1:
        return x
    if isinstance(x, dict):
        keys = sorted(x.keys())
        return {k: _mpi_sum(np.array(x[k])) for k in keys}
    else:
        return _mpi_sum(np.array(x))


# Syncronize all processes.
def mpi_sync():
    mpi_sum(0)
