from .stable_sections import dehomogenized, image_generators, s0_dimension, s0_table, working_degrees
