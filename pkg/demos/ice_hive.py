"""Build the SL4 tensor-product seed, lift it and print both quivers."""
from clusterlift import branching as br
from clusterlift import quiver
from clusterlift.rootsys import WeylWord, cartan

a3 = cartan("A3")
word = WeylWord.from_paper_order((1, 2, 3, 1, 2, 1), a3)
bs, lifted = br.tensor_seed(a3, word)

print("word in subscript order:", word)
print(quiver.to_text(bs.seed))
print("lifting matrix (rows 1_l..3_l, 1_r..3_r):")
for d, row in zip(lifted.nu.D, lifted.nu.nu):
    print(f"  {d:>4}", row)
print()
print(quiver.to_text(lifted))

# mutation carries the lifting matrix along
m = lifted.mutate_path(["1", "2"])
print("after mu_1 mu_2:", m.nu.nu)
