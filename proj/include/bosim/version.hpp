#pragma once

#define BOSIM_VERSION "1.0.0"
