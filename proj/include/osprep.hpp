#pragma once

#include "osprep/decomp.hpp"
#include "osprep/json_io.hpp"
#include "osprep/module.hpp"
#include "osprep/suites.hpp"
#include "osprep/tensor.hpp"
#include "osprep/validate.hpp"
