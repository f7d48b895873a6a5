import random

from charvar.words import Word


def random_word(rng: random.Random, ngens: int, max_len: int) -> Word:
    letters = []
    for _ in range(rng.randint(0, max_len)):
        letters.append((rng.randrange(ngens), rng.choice((1, -1))))
    return Word(letters)
