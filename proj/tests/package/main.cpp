#include <actcode/descriptor.hpp>
#include <actcode/synthetic.hpp>

int main() {
  actcode::SyntheticConfig cfg;
  cfg.classes = 2;
  cfg.per_class = 1;
  cfg.subjects = 1;
  const auto data = actcode::generate_synthetic(cfg);
  const auto d = actcode::compute_descriptor(data.actions.front(), 20);
  return actcode::stack_descriptor(d).size() == 270 ? 0 : 1;
}
