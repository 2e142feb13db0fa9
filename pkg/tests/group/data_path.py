import inspect
import os


def local_function():
    pass


def data_path(*names):
    """The ``data`` folder next to this module, or a file inside it."""
    folder = os.path.join(
        os.path.dirname(os.path.abspath(inspect.getsourcefile(local_function))), "data"
    )
    return os.path.join(folder, *names)
