from .instance_file import (DeclaredStructure, InstanceFile, TreeingCertificate, parse_instance, serialize_instance,
                            parse_certificate, serialize_certificate, digest)
from .generators import GeneratorConfig, gen_free_product, gen_amalgam, gen_subrelation, gen_treeing, perturb, generate
from .batch import run_instance, run_batch
