from collections import defaultdict
from typing import Callable, List, Type

from hopfcyc.logging import logger


class Registrable:
    """Per-base-class registry mapping names to implementations.

    Subclasses are added with ``@Base.register("name")``; the name is
    stored on the subclass as ``registered_name``.
    """

    _registry = defaultdict(dict)

    @classmethod
    def register(cls, name: str) -> Callable:
        registry = Registrable._registry[cls]

        def add_to_registry(subclass):
            if name in registry:
                if subclass != registry[name]:
                    raise ValueError(
                        f"Cannot register '{name}' multiple times for class '{cls.__name__}'."
                    )
                return subclass

            logger.debug(
                "Registering %s: adding %s as %s", cls.__name__, subclass.__name__, name
            )
            registry[name] = subclass
            subclass.registered_name = name
            return subclass

        return add_to_registry

    @classmethod
    def _lookup(cls, name: str):
        result = Registrable._registry[cls].get(name)
        if result is None:
            raise ValueError(
                f"'{name}' is not registered for class '{cls.__name__}'. "
                f"Known: {', '.join(cls.registered_names())}."
            )
        return result

    @classmethod
    def get_class_by_name(cls, name: str) -> Type:
        return cls._lookup(name)

    @classmethod
    def registered_names(cls) -> List[str]:
        return list(Registrable._registry[cls].keys())
