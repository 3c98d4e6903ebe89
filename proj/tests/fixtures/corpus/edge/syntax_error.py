import os


def broken(:
    return os.getcwd(


class Half:
    def method(self, x)
        if x > 1
            return x * 2
        return [1, 2,


def fine(a, b):
    return a + b
