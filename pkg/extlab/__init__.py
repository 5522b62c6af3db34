""" Linear-extension statistics and width-two poset inequalities. """

__version__ = "0.1.0"
