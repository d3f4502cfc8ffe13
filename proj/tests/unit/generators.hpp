#pragma once

#include "svt/verify/generators.hpp"

namespace gen = svt::gen;
