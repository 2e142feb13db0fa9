def cached(f):
    """
    Cache the result of a method on its instance.

    The optional positional argument (a key such as a model tag or a bound) is
    folded into the cache attribute name, so every key is cached separately.
    """

    def wrapper(self, key=None):
        def call():
            if key is not None:
                return f(self, key)
            else:
                return f(self)

        # Only the 'toplevel' implementation in a class hierarchy is cached.
        call_in_progress = "__" + f.__name__ + "_in_progress"
        if hasattr(self, call_in_progress):
            return call()
        cache_name = "__" + f.__name__
        if key is not None:
            cache_name = "{}[{}]".format(cache_name, key)
        if hasattr(self, cache_name):
            return getattr(self, cache_name)
        setattr(self, call_in_progress, True)
        try:
            value = call()
        finally:
            delattr(self, call_in_progress)
        setattr(self, cache_name, value)
        return value

    wrapper.__name__ = f.__name__
    wrapper.__qualname__ = f.__qualname__
    wrapper.__doc__ = f.__doc__
    return wrapper
