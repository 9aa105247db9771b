import logging

logging.basicConfig(format='%(levelname)s:%(asctime)s - (%(pathname)s) %(message)s', level=logging.INFO)

arboretum_logger = logging.getLogger('Arboretum')


def get_logger(name: str) -> logging.Logger:
    return arboretum_logger.getChild(name)


def set_verbosity(verbose: bool = False, quiet: bool = False):
    if quiet:
        arboretum_logger.setLevel(logging.WARNING)
    elif verbose:
        arboretum_logger.setLevel(logging.DEBUG)
    else:
        arboretum_logger.setLevel(logging.INFO)
