#include <pybind11/pybind11.h>
PYBIND11_MODULE(_graphforge, m) { m.doc() = "placeholder"; }
